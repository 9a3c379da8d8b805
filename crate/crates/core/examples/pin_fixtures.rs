//! Prints a regenerated pinned-diagonal fixture file.

fn main() {
    match fourvertex::harness::fixtures::render_fixture_file() {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
