fn main() {
    std::process::exit(whp_cli::run(std::env::args_os()));
}
