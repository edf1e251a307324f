fn main() {
    std::process::exit(bolalg::cli::main());
}
