use std::io::Read;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = schwarz_spectra::cli::run(&args, || {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).ok();
        buf
    });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
