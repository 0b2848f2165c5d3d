fn main() {
    std::process::exit(chromstab::cli::main());
}
