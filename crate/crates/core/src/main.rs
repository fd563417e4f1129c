fn main() {
    std::process::exit(nefcert::cli::run(std::env::args_os()));
}
