fn main() {
    std::process::exit(lampsep::cli::run(std::env::args().collect()));
}
