//! Drives the command-line front end: a grid sweep over real ν in G2.

pub fn run_example() -> pxi::Result<()> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["pxi", "sweep", "--type", "G2", "--tau", "C2p2", "--lo", "0", "--hi", "2", "--step", "1/2"];
    let code = pxi::cli::run(args, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    if code != 0 {
        return Err(pxi::Error::Precondition(format!("sweep exited with {code}")));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
