fn main() {
    std::process::exit(nulltree::cli::run(std::env::args_os()));
}
