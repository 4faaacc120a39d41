fn main() {
    std::process::exit(framekit::cli::main(std::env::args_os()));
}
