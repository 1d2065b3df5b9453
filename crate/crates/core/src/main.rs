fn main() {
    std::process::exit(toralg::cli::run(std::env::args_os()));
}
