fn main() {
    std::process::exit(sectorcast::cli::run());
}
