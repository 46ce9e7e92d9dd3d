fn main() {
    std::process::exit(laguerre_cert::cli::run(std::env::args_os()));
}
