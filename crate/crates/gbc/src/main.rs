fn main() {
    std::process::exit(gbc::cli::run());
}
