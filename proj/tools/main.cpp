#include "cli.hpp"

int main(int argc, char** argv)
{
	return asx::cli::run(argc, argv);
}
