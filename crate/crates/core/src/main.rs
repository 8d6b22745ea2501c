fn main() {
    std::process::exit(daisycube::cli::main());
}
