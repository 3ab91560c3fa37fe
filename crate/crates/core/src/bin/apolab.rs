fn main() {
    std::process::exit(apolarity_lab::cli::run_from_env());
}
