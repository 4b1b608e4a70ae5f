fn main() {
    std::process::exit(onebit_detect::cli::main_with_args(std::env::args_os()));
}
