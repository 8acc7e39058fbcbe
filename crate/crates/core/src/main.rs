fn main() {
    std::process::exit(linkpred::cli::run());
}
