from setuptools import setup

setup(name='pyquiver',
      version='0.1.0',
      description='Vertex algebras, twisted modules and wall-crossing invariants for self-dual quivers',
      packages=['pyquiver'],
      package_dir={'pyquiver':'source/.'},
      install_requires=['sympy'],
      extras_require={'test': ['hypothesis']},
      entry_points={'console_scripts': ['pyquiver = pyquiver.cli:main']}
     )
