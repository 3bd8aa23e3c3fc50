#include <cstdio>
int main() { std::puts("e8rcli: placeholder"); return 0; }
