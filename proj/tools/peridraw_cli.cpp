// placeholder; replaced by the full CLI once io lands
int main() { return 0; }
