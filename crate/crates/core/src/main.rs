fn main() {
    std::process::exit(locdom::cli::run_from_env());
}
