fn main() {
    std::process::exit(dirac_aim::cli::run(std::env::args()));
}
