fn main() {
    let code = fibonomial::cli::run(std::env::args_os());
    std::process::exit(code);
}
