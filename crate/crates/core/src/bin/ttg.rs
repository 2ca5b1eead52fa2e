fn main() {
    let (out, code) = ttg_spectra::cli::run(std::env::args_os());
    // JSON documents, including domain errors, go to stdout; usage text to stderr
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
