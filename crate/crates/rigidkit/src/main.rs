fn main() {
    std::process::exit(rigidkit::cli::run(std::env::args_os()));
}
