fn main() {
    std::process::exit(poisson_workbench::cli::run(std::env::args_os()));
}
