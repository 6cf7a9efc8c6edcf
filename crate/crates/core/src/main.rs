fn main() {
    std::process::exit(quadgait::cli_io::cli::run(std::env::args_os()));
}
