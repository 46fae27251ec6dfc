// Command-line interface; subcommands are filled in as the library grows.
#include <cstdio>

int main()
{
    std::puts("qwhit: placeholder");
    return 0;
}
