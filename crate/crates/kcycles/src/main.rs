fn main() {
    std::process::exit(kcycles::cli::run());
}
