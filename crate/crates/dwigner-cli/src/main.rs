fn main() { println!("{:?}", dwigner::probe()); }
