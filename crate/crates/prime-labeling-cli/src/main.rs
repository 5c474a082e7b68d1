fn main() {
    std::process::exit(prime_labeling_cli::cli::run());
}
