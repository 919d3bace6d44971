fn main() {
    std::process::exit(bier_spheres::cli::main());
}
