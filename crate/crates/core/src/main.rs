fn main() {
    std::process::exit(kronquiver::cli::run(std::env::args_os()));
}
