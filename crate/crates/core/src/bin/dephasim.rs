fn main() {
    std::process::exit(dephasim::cli::main_with(std::env::args_os()));
}
