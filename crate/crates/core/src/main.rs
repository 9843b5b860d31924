fn main() {
    std::process::exit(weylgrad::cli::run());
}
