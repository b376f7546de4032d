fn main() {
    std::process::exit(monogap::cli::run(std::env::args_os()));
}
