fn main() {
    std::process::exit(convexcount::cli::run());
}
