fn main() {
    std::process::exit(clique_spectra_cli::run(std::env::args_os()));
}
