fn main() {
    let (code, report) = paracycle::cli::run(std::env::args_os());
    println!("{}", report.render());
    std::process::exit(code);
}
