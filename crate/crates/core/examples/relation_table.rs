use negabent::oracle::{check_su_conditions, check_table1, SuCase};

fn main() -> negabent::Result<()> {
    print!("{}", check_table1(1)?.to_text());
    for case in SuCase::ALL {
        println!();
        print!("{}", check_su_conditions(case)?.to_text());
    }
    Ok(())
}
