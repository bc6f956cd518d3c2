fn main() {
    std::process::exit(crepant::cli::run());
}
