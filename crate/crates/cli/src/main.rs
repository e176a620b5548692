use std::io::Write;

fn main() {
    let env = std::env::var_os(tpcalc::FIXTURES_ENV).map(Into::into);
    let out = tpcalc::run(std::env::args_os(), env);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
