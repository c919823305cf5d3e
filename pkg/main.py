from app import cli


def main():
    cli(prog_name='lattice13')


if __name__ == "__main__":
    main()
