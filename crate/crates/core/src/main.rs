fn main() {
    std::process::exit(deformata::frontend::cli::run());
}
