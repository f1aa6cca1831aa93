//! Driving the command-line front end from code.

use jordan_lift::cli::run;

fn main() {
    for argv in [
        vec!["jordan-lift", "dims", "--space", "jordan", "--max-degree", "6"],
        vec!["jordan-lift", "table1", "--q12q21", "1", "--eps", "1", "--q22", "1", "--ghost", "2"],
        vec!["jordan-lift", "lift", "zerodiv", "--triple", "super-jordan", "--lambda", "4", "--sqrt-lambda", "2"],
        vec!["jordan-lift", "dims", "--space", "nowhere"],
    ] {
        let (code, report) = run(&argv);
        println!("$ {}  (exit {code})", argv[1..].join(" "));
        print!("{report}");
    }
}
