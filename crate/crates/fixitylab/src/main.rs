fn main() {
    std::process::exit(fixitylab::cli::run());
}
