fn main() {
    std::process::exit(imbalmed::cli::main_with_args(std::env::args_os()));
}
