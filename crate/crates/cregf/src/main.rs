fn main() {
    std::process::exit(cregf::cli::main());
}
