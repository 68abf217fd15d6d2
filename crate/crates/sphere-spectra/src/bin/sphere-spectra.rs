fn main() {
    std::process::exit(sphere_spectra::cli::run());
}
