fn main() {
    std::process::exit(symtrap::cli::run(std::env::args_os()));
}
