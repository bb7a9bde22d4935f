fn main() {
    std::process::exit(modpovm::cli::main_with_args(std::env::args_os()));
}
