fn main() {
    std::process::exit(mirhecke::cli::run(std::env::args_os()));
}
