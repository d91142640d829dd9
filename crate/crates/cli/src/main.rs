use std::io::Write;

fn main() {
    let outcome = branecharge_cli::run(std::env::args());
    let mut text = outcome.output;
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    if outcome.code == 0 {
        print!("{text}");
    } else {
        let _ = write!(std::io::stderr(), "{text}");
    }
    std::process::exit(outcome.code);
}
