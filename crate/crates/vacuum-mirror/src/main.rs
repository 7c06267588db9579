fn main() {
    std::process::exit(vacuum_mirror::cli::run());
}
