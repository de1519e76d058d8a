//! Read an OFF mesh (or use a built-in cube), analyze it and print the
//! JSON document the CLI would emit.

use equilib::cli_io::cli::run;
use equilib::cli_io::{off_string, parse_off, write_off, AnalysisDocument};
use equilib::geom_core::solids::unit_cube;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable mesh"),
        None => off_string(&unit_cube()),
    };
    let p = parse_off(&text).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(66);
    });
    let dir = std::env::temp_dir().join(format!("equilib-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mesh.off");
    write_off(&p, &path).unwrap();

    let mut out = Vec::new();
    let code = run(["equilib", "analyze", path.to_str().unwrap()], &mut out);
    let json = String::from_utf8(out).unwrap();
    println!("{json}");
    if code == 0 {
        let doc = AnalysisDocument::from_json(&json).unwrap();
        assert_eq!(doc.to_json(), json.trim_end());
        println!("round trip exact; exit code {code}");
    }
    std::fs::remove_dir_all(dir).ok();
}
