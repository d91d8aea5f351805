use std::collections::BTreeMap;
use std::io::{stderr, stdout};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let env: BTreeMap<String, String> = std::env::vars().collect();
    let code = flaghg::run_cli(&argv, &env, &mut stdout().lock(), &mut stderr().lock());
    std::process::exit(code);
}
