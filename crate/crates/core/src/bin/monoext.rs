fn main() {
    std::process::exit(monoext::cli::main_with_args(std::env::args_os()));
}
