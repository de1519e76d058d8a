fn main() {
    let code = equilib::cli_io::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
