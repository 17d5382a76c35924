fn main() {
    let (code, out) = outerk::cli::run(std::env::args_os());
    if code == 0 {
        print!("{out}");
        if !out.ends_with('\n') {
            println!();
        }
    } else {
        eprintln!("{out}");
    }
    std::process::exit(code);
}
