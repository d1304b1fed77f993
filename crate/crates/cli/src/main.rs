fn main() {
    println!("qheston");
}
