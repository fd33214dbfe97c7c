fn main() {
    std::process::exit(shiftalg::cli::main_with_args(std::env::args_os()));
}
