fn main() {
    std::process::exit(crystal_models::cli::run());
}
