use negabent::reference::{check_worked_example, worked_examples};

fn main() -> negabent::Result<()> {
    for ex in worked_examples()? {
        let report = check_worked_example(&ex)?;
        println!("{} {}", if report.passed() { "PASS" } else { "FAIL" }, ex.name);
        for c in &report.checks {
            println!("    {:<16} {}", c.name, c.details);
        }
    }
    Ok(())
}
