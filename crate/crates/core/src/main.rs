use std::io::{stderr, stdout, BufWriter};

fn main() {
    if let Some(n) = std::env::var("APOLLON_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let code = {
        let mut out = BufWriter::new(stdout().lock());
        apollon::cli::run(std::env::args_os(), &mut out, &mut stderr())
    };
    std::process::exit(code);
}
