use super::IoError;
use crate::geom_core::{newell_plane, normalize_faces, validate, ConvexPolyhedron, Vec3, EPS_GEOM};
use std::fmt::Write as _;
use std::path::Path;

/// Reads an ASCII OFF file; see [`parse_off`].
pub fn read_off(path: impl AsRef<Path>) -> Result<ConvexPolyhedron, IoError> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| IoError::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_off(&text)
}

struct Tokens<'a> {
    items: Vec<(usize, usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let mut items = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let mut col = 0;
            for tok in body.split_whitespace() {
                let at = body[col..].find(tok).map(|i| i + col).unwrap_or(col);
                items.push((ln + 1, at + 1, tok));
                col = at + tok.len();
            }
        }
        Tokens { items, pos: 0 }
    }

    fn line_of_next(&self) -> Option<usize> {
        self.items.get(self.pos).map(|t| t.0)
    }

    fn end(&self) -> (usize, usize) {
        self.items.last().map(|t| (t.0, t.1 + t.2.len())).unwrap_or((1, 1))
    }

    fn next<T: std::str::FromStr>(&mut self, what: &str) -> Result<(T, usize, usize), IoError> {
        let Some(&(line, col, tok)) = self.items.get(self.pos) else {
            let (line, col) = self.end();
            return Err(IoError::Parse { line, col, message: format!("unexpected end of file, expected {what}") });
        };
        self.pos += 1;
        tok.parse::<T>()
            .map(|v| (v, line, col))
            .map_err(|_| IoError::Parse { line, col, message: format!("expected {what}, found {tok:?}") })
    }
}

/// Parses OFF text into a validated convex polyhedron.
///
/// Faces may come in either orientation; each is turned to face away from
/// the vertex average. Coplanar neighbours are merged. Any vertex outside
/// a face plane beyond tolerance rejects the input as non-convex.
pub fn parse_off(text: &str) -> Result<ConvexPolyhedron, IoError> {
    let mut t = Tokens::new(text);
    let (head, line, col) = t.next::<String>("OFF header")?;
    if head != "OFF" {
        return Err(IoError::Parse { line, col, message: format!("expected OFF header, found {head:?}") });
    }
    let (nv, _, _) = t.next::<usize>("vertex count")?;
    let (nf, _, _) = t.next::<usize>("face count")?;
    let (_ne, _, _) = t.next::<usize>("edge count")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let start = t.line_of_next();
        let (x, _, _) = t.next::<f64>("vertex coordinate")?;
        let (y, ly, cy) = t.next::<f64>("vertex coordinate")?;
        let (z, lz, cz) = t.next::<f64>("vertex coordinate")?;
        if Some(ly) != start || Some(lz) != start {
            let (line, col) = if Some(ly) != start { (ly, cy) } else { (lz, cz) };
            return Err(IoError::Parse { line, col, message: "vertex line has fewer than 3 coordinates".into() });
        }
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(IoError::Parse { line: lz, col: cz, message: "non-finite coordinate".into() });
        }
        vertices.push(Vec3::new(x, y, z));
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (k, line, col) = t.next::<usize>("face vertex count")?;
        if k < 3 {
            return Err(IoError::Parse { line, col, message: format!("face with {k} vertices") });
        }
        let mut f = Vec::with_capacity(k);
        for _ in 0..k {
            let (i, l, c) = t.next::<usize>("vertex index")?;
            if l != line {
                return Err(IoError::Parse { line: l, col: c, message: "face line ends early".into() });
            }
            if i >= nv {
                return Err(IoError::Parse { line: l, col: c, message: format!("vertex index {i} out of range") });
            }
            f.push(i);
        }
        faces.push(f);
    }
    if let Some(&(line, col, tok)) = t.items.get(t.pos) {
        return Err(IoError::Parse { line, col, message: format!("trailing data {tok:?} after declared counts") });
    }
    build_convex(vertices, faces)
}

fn build_convex(vertices: Vec<Vec3>, mut faces: Vec<Vec<usize>>) -> Result<ConvexPolyhedron, IoError> {
    if vertices.len() < 4 || faces.len() < 4 {
        return Err(IoError::DegenerateGeometry("fewer than 4 vertices or faces".into()));
    }
    let centre = vertices.iter().sum::<Vec3>() / vertices.len() as f64;
    let scale = vertices.iter().map(|v| (v - centre).norm()).fold(0.0, f64::max);
    let tol = EPS_GEOM * scale;
    for (fi, f) in faces.iter_mut().enumerate() {
        let pl = newell_plane(&vertices, f);
        if pl.normal.norm() == 0.0 {
            return Err(IoError::DegenerateGeometry(format!("face {fi} has no area")));
        }
        if pl.signed_distance(&centre) > 0.0 {
            f.reverse();
        }
    }
    for (fi, f) in faces.iter().enumerate() {
        let pl = newell_plane(&vertices, f);
        if -pl.signed_distance(&centre) <= tol {
            return Err(IoError::DegenerateGeometry(format!("face {fi} passes through the vertex average")));
        }
        let mut worst: Option<(usize, f64)> = None;
        for (vi, v) in vertices.iter().enumerate() {
            let d = pl.signed_distance(v);
            if d > tol && worst.map(|w| d > w.1).unwrap_or(true) {
                worst = Some((vi, d));
            }
        }
        if let Some((vertex, _)) = worst {
            return Err(IoError::NotConvex { vertex, face: fi });
        }
    }
    let p = normalize_faces(vertices, faces);
    let violations = validate(&p);
    if !violations.is_empty() {
        return Err(IoError::DegenerateGeometry(format!("{violations:?}")));
    }
    Ok(p)
}

/// OFF text with vertices and faces in stored order. Coordinates use the
/// shortest representation that reads back to the same `f64`.
pub fn off_string(p: &ConvexPolyhedron) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "OFF");
    let _ = writeln!(s, "{} {} {}", p.num_vertices(), p.num_faces(), p.num_edges());
    for v in p.vertices() {
        let _ = writeln!(s, "{:?} {:?} {:?}", v.x, v.y, v.z);
    }
    for f in p.faces() {
        let _ = write!(s, "{}", f.len());
        for i in f {
            let _ = write!(s, " {i}");
        }
        s.push('\n');
    }
    s
}

pub fn write_off(p: &ConvexPolyhedron, path: impl AsRef<Path>) -> Result<(), IoError> {
    std::fs::write(path.as_ref(), off_string(p)).map_err(|e| IoError::Io(format!("{}: {e}", path.as_ref().display())))
}

/// Wavefront OBJ (1-based indices), for viewers.
pub fn write_obj(p: &ConvexPolyhedron, path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut s = String::new();
    for v in p.vertices() {
        let _ = writeln!(s, "v {:?} {:?} {:?}", v.x, v.y, v.z);
    }
    for f in p.faces() {
        s.push('f');
        for i in f {
            let _ = write!(s, " {}", i + 1);
        }
        s.push('\n');
    }
    std::fs::write(path.as_ref(), s).map_err(|e| IoError::Io(format!("{}: {e}", path.as_ref().display())))
}
