#include <cstdio>

int main() {
    std::puts("thl: subcommands not wired up yet");
    return 1;
}
