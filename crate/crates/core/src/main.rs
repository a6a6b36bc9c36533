fn main() {
    std::process::exit(cliffroots::cli::main_with_args(std::env::args_os()));
}
