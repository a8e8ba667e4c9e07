fn main() {
    std::process::exit(ontoarch::cli::run(std::env::args_os()));
}
