from pst_apsp.cli import cli

if __name__ == '__main__':
    cli(prog_name='pst_apsp')
