fn main() {
    std::process::exit(flag_spheres::cli::run(std::env::args_os()));
}
