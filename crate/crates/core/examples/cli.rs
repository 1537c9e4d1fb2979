// Driving the command line interface in-process.

fn main() -> shx::Result<()> {
    let runs: [&[&str]; 5] = [
        &["shx", "table", "--t", "2", "--output", "pretty"],
        &["shx", "eval", "--t", "-1", "--mul", "0,0,1,0", "0,0,0,1"],
        &["shx", "check", "--t", "1", "--fn", "zeta3", "--samples", "20"],
        &["shx", "expand", "--t", "0.5", "--fn", "etapow:1,0,2", "--samples", "20"],
        &["shx", "polar", "--t", "2", "--x", "3", "--u", "-1", "--output", "pretty"],
    ];
    for args in runs {
        let out = shx::cli::run(args.iter().copied());
        println!("$ {}", args.join(" "));
        print!("{}", out.stdout);
        eprint!("{}", out.stderr);
        println!("[exit {}]", out.code);
    }
    Ok(())
}
