import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
fig, ax = plt.subplots()
ax.scatter(cars["horsepower"], cars["mpg"])
ax.set_xlabel("horsepower")
ax.set_ylabel("mpg")
plt.show()
