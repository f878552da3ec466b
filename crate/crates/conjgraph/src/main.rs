fn main() {
    std::process::exit(conjgraph::cli::run_cli(std::env::args()));
}
