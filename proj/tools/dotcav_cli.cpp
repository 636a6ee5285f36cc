#include <iostream>

int main() {
    std::cout << "dotcav: pipeline CLI (under construction)\n";
    return 0;
}
